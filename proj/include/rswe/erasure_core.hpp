#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "rswe/gf_field.hpp"

// Erasure decoding of Reed-Solomon codewords over GF(2^m) in two steps:
//
//   1. Lagrange coefficients. With Pi(x) = prod_{y in R, y != x} (x ^ y),
//      log Pi is the dyadic convolution of the received-set indicator with
//      the discrete-log table (log 0 taken as 0), computed modulo q-1 with
//      Walsh transforms. Then c_x = P(x) / Pi(x) for x in R.
//
//   2. Evaluation at every point. Off R,
//          P(x) = Pi(x) * XOR_y C(y) * I(x ^ y)
//      where C carries the coefficients and I is field inversion. Splitting
//      C and I into bit planes over the basis alpha^i turns the inner sum
//      into m^2 binary convolutions whose parities are all that matter.
//      Grouping the (i, j) pairs by s = i + j leaves 2m-1 inverse
//      transforms, each carried out modulo 2^(m+1) (here: wrapping uint32).
//
//      Each inversion plane has weight q/2, so its transform is even.
//      Halving it halves every product, and the parity then sits in bit m-1
//      of a sum needed only modulo 2^m. For m <= 16 the whole stage runs in
//      16-bit lanes.
namespace rswe::erasure {

using gf::Element;
using gf::FieldTables;

// Received coordinates of one codeword.
struct ReceivedSet {
    std::vector<std::uint8_t> indicator;  // q entries, 1 for received points
    std::vector<std::uint32_t> positions;  // ascending
    std::vector<Element> values;           // values[i] is the symbol at positions[i]

    std::size_t size() const noexcept { return positions.size(); }
    bool contains(std::uint32_t x) const noexcept { return x < indicator.size() && indicator[x] != 0; }

    // Validates positions (< q, distinct) and symbols (< q). Throws
    // PositionOutOfRange, DuplicatePosition, SymbolOutOfRange or BadLength.
    static ReceivedSet from_points(const FieldTables& t, std::span<const std::uint32_t> positions,
                                   std::span<const Element> values);
    static ReceivedSet from_pairs(const FieldTables& t, std::span<const std::pair<std::uint32_t, Element>> pairs);
};

// logpi[x] = log Pi(x) mod q-1, for every point of the field.
struct LogPiVector {
    std::vector<std::uint32_t> logpi;
};

// coeffs[x] = c_x on R, zero elsewhere. positions mirrors R.
struct CoeffVector {
    std::vector<Element> coeffs;
    std::vector<std::uint32_t> positions;
};

// Per-field precomputation shared by every decode over that field.
struct FieldTransforms {
    unsigned m = 0;
    std::uint32_t poly = 0;
    std::uint32_t q = 0;
    // Distance between consecutive planes. Padded past q so that planes do
    // not alias to the same cache sets when read side by side.
    std::size_t stride = 0;
    std::vector<std::uint32_t> lhat;  // transform of the log table, mod q-1
    std::vector<std::uint32_t> ihat;  // plane j: transform of inversion bit plane j, mod 2^(m+1)
    std::vector<Element> basis;       // basis[i] = alpha^i

    // m <= 16 only: plane j holds ihat_j / 2 modulo 2^16.
    std::size_t narrow_stride = 0;
    std::vector<std::uint16_t> ihat_half;

    bool narrow() const noexcept { return !ihat_half.empty(); }

    std::span<const std::uint32_t> ihat_plane(unsigned j) const noexcept {
        return std::span(ihat).subspan(std::size_t{j} * stride, q);
    }
};

// Largest degree served by the 16-bit evaluation path.
inline constexpr unsigned kMaxNarrowDegree = 16;

// Plane stride, in elements, for q-point vectors stacked in one allocation.
std::size_t plane_stride(std::uint32_t q) noexcept;
std::size_t narrow_plane_stride(std::uint32_t q) noexcept;

std::shared_ptr<const FieldTransforms> precompute_field_transforms(const FieldTables& t);

// Decode context: shared per-field transforms plus per-decode scratch
// (m coefficient-plane transforms and 2m-1 accumulators). One decode at a
// time; distinct stacks over the same field may run concurrently.
class TransformStack {
public:
    explicit TransformStack(std::shared_ptr<const FieldTransforms> field);

    const FieldTransforms& field() const noexcept { return *field_; }
    std::span<const std::uint32_t> ihat(unsigned j) const noexcept { return field_->ihat_plane(j); }
    std::span<const Element> basis() const noexcept { return field_->basis; }
    // Coefficient-plane transforms of the last evaluate_all; chat() for
    // m > 16, chat_half() (residues modulo 2^16) otherwise.
    std::span<const std::uint32_t> chat(unsigned i) const noexcept;
    std::span<const std::uint16_t> chat_half(unsigned i) const noexcept;

    bool matches(const FieldTables& t) const noexcept { return field_->m == t.m && field_->poly == t.poly; }

private:
    friend std::vector<Element> evaluate_all(const CoeffVector&, const LogPiVector&, const ReceivedSet&,
                                             TransformStack&, const FieldTables&);
    void reserve_scratch();
    std::span<std::uint32_t> chat_mut(unsigned i) noexcept;
    std::span<std::uint32_t> acc_mut(unsigned s) noexcept;

    std::shared_ptr<const FieldTransforms> field_;
    // m coefficient planes and 2m-1 accumulators, in whichever width the
    // field uses.
    std::vector<std::uint32_t> chat_;
    std::vector<std::uint32_t> acc_;
    std::vector<std::uint16_t> chat16_;
    std::vector<std::uint16_t> acc16_;
};

TransformStack precompute_inverse_stack(const FieldTables& t);

// Transform (mod q-1) of the discrete-log image vector; fixed per field.
std::vector<std::uint32_t> log_table_transform(const FieldTables& t);

// O(q log q). Throws EmptyReceivedSet. The overloads taking a stack or a
// precomputed log-table transform skip one of the three transforms.
LogPiVector compute_log_pi(const ReceivedSet& r, const FieldTables& t);
LogPiVector compute_log_pi(const ReceivedSet& r, const FieldTables& t, const TransformStack& stack);
LogPiVector compute_log_pi(const ReceivedSet& r, const FieldTables& t, std::span<const std::uint32_t> lhat);

CoeffVector lagrange_coefficients(const ReceivedSet& r, const LogPiVector& logpi, const FieldTables& t);

// All q values of the interpolant: received points are copied, the rest are
// evaluated with 3m-1 transforms. Throws StackFieldMismatch.
std::vector<Element> evaluate_all(const CoeffVector& c, const LogPiVector& logpi, const ReceivedSet& r,
                                  TransformStack& stack, const FieldTables& t);

// Same output using three q-length work vectors and m^2 pairwise
// convolutions, recomputing every transform.
std::vector<Element> evaluate_all_low_memory(const CoeffVector& c, const LogPiVector& logpi, const ReceivedSet& r,
                                             const FieldTables& t);

// Direct evaluation of the Lagrange form at erased points, O(|R|) each.
// Throws PointInReceivedSet, PositionOutOfRange.
std::vector<Element> evaluate_at_points(const CoeffVector& c, const LogPiVector& logpi,
                                        std::span<const std::uint32_t> pts, const FieldTables& t);

}  // namespace rswe::erasure
