#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "rswe/erasure_core.hpp"
#include "rswe/gf_field.hpp"

namespace rswe::codec {

using gf::Element;
using ReceivedSymbol = std::pair<std::uint32_t, Element>;  // (coordinate, symbol)

struct CodecParams {
    unsigned m = 8;
    std::uint32_t k = 1;
    std::uint32_t n = 1;
};

// Throws BadParams unless 2 <= m <= 20 and 1 <= k <= n <= 2^m.
void validate(const CodecParams& p);

// Coordinate x of a codeword holds P(x); only the first n are stored.
struct Codeword {
    std::vector<Element> symbols;
};

enum class DecodePath {
    Auto,       // direct evaluation when few targets are missing, transforms otherwise
    Direct,     // evaluate the Lagrange form at each missing coordinate
    Transform,  // evaluate everywhere with the Walsh-transform stack
};

// Chooses Direct when missing * received < kDirectPathFactor * q * m.
inline constexpr std::uint64_t kDirectPathFactor = 4;
DecodePath choose_path(std::uint64_t missing, std::uint64_t received, const gf::FieldTables& t);

// Field tables plus lazily built transform precomputation, shared by every
// codec over the same degree.
class FieldContext {
public:
    explicit FieldContext(unsigned m);

    const gf::FieldTables& tables() const noexcept { return tables_; }
    std::span<const std::uint32_t> lhat() const noexcept { return lhat_; }

    // Borrow a decode stack; returned to the pool when the lease dies.
    class StackLease {
    public:
        StackLease(const FieldContext& owner, std::unique_ptr<erasure::TransformStack> stack)
            : owner_(&owner), stack_(std::move(stack)) {}
        StackLease(StackLease&&) noexcept = default;
        StackLease& operator=(StackLease&&) noexcept = default;
        ~StackLease();

        erasure::TransformStack& operator*() const noexcept { return *stack_; }

    private:
        const FieldContext* owner_;
        std::unique_ptr<erasure::TransformStack> stack_;
    };

    StackLease acquire_stack() const;

    // Precomputes the inverse-function transforms if not done yet.
    void warm_up() const;

private:
    std::shared_ptr<const erasure::FieldTransforms> transforms() const;

    gf::FieldTables tables_;
    std::vector<std::uint32_t> lhat_;
    mutable std::once_flag transforms_once_;
    mutable std::shared_ptr<const erasure::FieldTransforms> transforms_;
    mutable std::mutex pool_lock_;
    mutable std::vector<std::unique_ptr<erasure::TransformStack>> idle_;
};

// Process-wide context for degree m (default polynomial), built on first use.
std::shared_ptr<const FieldContext> field_context(unsigned m);

// A fixed set of received coordinates with its log-Pi vector, reusable for
// every stripe that shares the same erasure pattern.
class ErasurePlan {
public:
    ErasurePlan(std::shared_ptr<const FieldContext> ctx, std::span<const std::uint32_t> positions,
                std::uint32_t limit, DecodePath path = DecodePath::Auto);

    // values[i] is the symbol at positions()[i] (ascending order). Returns
    // coordinates [0, limit).
    std::vector<Element> recover(std::span<const Element> values) const;

    std::span<const std::uint32_t> positions() const noexcept { return received_.positions; }
    std::span<const std::uint32_t> missing() const noexcept { return missing_; }
    DecodePath path() const noexcept { return path_; }
    const erasure::LogPiVector& log_pi() const noexcept { return logpi_; }

private:
    std::shared_ptr<const FieldContext> ctx_;
    erasure::ReceivedSet received_;  // values left empty
    std::vector<std::uint32_t> missing_;
    std::uint32_t limit_;
    DecodePath path_;
    erasure::LogPiVector logpi_;
};

class Codec {
public:
    explicit Codec(CodecParams p);

    const CodecParams& params() const noexcept { return params_; }
    const gf::FieldTables& field() const noexcept { return ctx_->tables(); }
    const std::shared_ptr<const FieldContext>& context() const noexcept { return ctx_; }

    // First k coordinates equal the message. Throws BadLength, SymbolOutOfRange.
    Codeword encode_systematic(std::span<const Element> message) const;

    // Coordinates 0..k-1 of the codeword through the received symbols.
    // Throws NotEnoughSymbols, DuplicatePosition, PositionOutOfRange,
    // SymbolOutOfRange.
    std::vector<Element> decode(std::span<const ReceivedSymbol> received, DecodePath path = DecodePath::Auto) const;

    // All n coordinates; same errors as decode.
    Codeword reconstruct(std::span<const ReceivedSymbol> received, DecodePath path = DecodePath::Auto) const;

    // Plan for decoding many stripes that lose the same coordinates.
    ErasurePlan plan(std::span<const std::uint32_t> positions, std::uint32_t limit,
                     DecodePath path = DecodePath::Auto) const;

private:
    std::vector<Element> recover(std::span<const ReceivedSymbol> received, std::uint32_t limit, DecodePath path) const;

    CodecParams params_;
    std::shared_ptr<const FieldContext> ctx_;
    mutable std::once_flag encode_plan_once_;
    mutable std::unique_ptr<ErasurePlan> encode_plan_;
};

// Convenience wrappers over a temporary Codec.
Codeword encode_systematic(std::span<const Element> message, const CodecParams& p);
std::vector<Element> decode(std::span<const ReceivedSymbol> received, const CodecParams& p);
Codeword reconstruct(std::span<const ReceivedSymbol> received, const CodecParams& p);

}  // namespace rswe::codec
