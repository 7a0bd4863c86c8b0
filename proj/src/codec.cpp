#include "rswe/codec.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rswe/error.hpp"

namespace rswe::codec {

void validate(const CodecParams& p) {
    if (p.m < gf::kMinDegree || p.m > gf::kMaxDegree)
        throw Error(Errc::BadParams, "m must be in [2, 20], got " + std::to_string(p.m));
    const std::uint64_t q = std::uint64_t{1} << p.m;
    if (p.k < 1 || p.k > p.n || p.n > q)
        throw Error(Errc::BadParams, "need 1 <= k <= n <= 2^m, got k=" + std::to_string(p.k) +
                                         " n=" + std::to_string(p.n));
}

DecodePath choose_path(std::uint64_t missing, std::uint64_t received, const gf::FieldTables& t) {
    return missing * received < kDirectPathFactor * t.q * t.m ? DecodePath::Direct : DecodePath::Transform;
}

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(unsigned m) : tables_(gf::build_field(m)), lhat_(erasure::log_table_transform(tables_)) {}

FieldContext::StackLease::~StackLease() {
    if (!stack_) return;
    std::lock_guard guard(owner_->pool_lock_);
    owner_->idle_.push_back(std::move(stack_));
}

std::shared_ptr<const erasure::FieldTransforms> FieldContext::transforms() const {
    std::call_once(transforms_once_, [this] { transforms_ = erasure::precompute_field_transforms(tables_); });
    return transforms_;
}

void FieldContext::warm_up() const { transforms(); }

FieldContext::StackLease FieldContext::acquire_stack() const {
    {
        std::lock_guard guard(pool_lock_);
        if (!idle_.empty()) {
            auto stack = std::move(idle_.back());
            idle_.pop_back();
            return StackLease(*this, std::move(stack));
        }
    }
    return StackLease(*this, std::make_unique<erasure::TransformStack>(transforms()));
}

std::shared_ptr<const FieldContext> field_context(unsigned m) {
    if (m < gf::kMinDegree || m > gf::kMaxDegree)
        throw Error(Errc::BadParams, "m must be in [2, 20], got " + std::to_string(m));
    static std::mutex lock;
    static std::array<std::shared_ptr<const FieldContext>, gf::kMaxDegree + 1> contexts;
    std::lock_guard guard(lock);
    if (!contexts[m]) contexts[m] = std::make_shared<const FieldContext>(m);
    return contexts[m];
}

// ---------------------------------------------------------------------------
// ErasurePlan

ErasurePlan::ErasurePlan(std::shared_ptr<const FieldContext> ctx, std::span<const std::uint32_t> positions,
                         std::uint32_t limit, DecodePath path)
    : ctx_(std::move(ctx)), limit_(limit), path_(path) {
    const auto& t = ctx_->tables();
    if (limit_ > t.q) throw Error(Errc::BadParams, "limit exceeds field size");
    std::vector<Element> zeros(positions.size(), 0);
    received_ = erasure::ReceivedSet::from_points(t, positions, zeros);
    received_.values.clear();

    for (std::uint32_t x = 0; x < limit_; ++x)
        if (!received_.contains(x)) missing_.push_back(x);
    if (missing_.empty()) return;

    if (path_ == DecodePath::Auto) path_ = choose_path(missing_.size(), received_.size(), t);
    logpi_ = erasure::compute_log_pi(received_, t, ctx_->lhat());
}

std::vector<Element> ErasurePlan::recover(std::span<const Element> values) const {
    const auto& t = ctx_->tables();
    if (values.size() != received_.size()) throw Error(Errc::BadLength, "one value per received position expected");
    for (Element v : values)
        if (v >= t.q) throw Error(Errc::SymbolOutOfRange, "symbol " + std::to_string(v) + " >= q");

    std::vector<Element> out(limit_, 0);
    if (missing_.empty()) {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (received_.positions[i] < limit_) out[received_.positions[i]] = values[i];
        return out;
    }

    erasure::ReceivedSet r = received_;
    r.values.assign(values.begin(), values.end());
    const auto coeffs = erasure::lagrange_coefficients(r, logpi_, t);

    if (path_ == DecodePath::Direct) {
        const auto found = erasure::evaluate_at_points(coeffs, logpi_, missing_, t);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r.positions[i] < limit_) out[r.positions[i]] = r.values[i];
        for (std::size_t i = 0; i < missing_.size(); ++i) out[missing_[i]] = found[i];
        return out;
    }

    auto lease = ctx_->acquire_stack();
    const auto full = erasure::evaluate_all(coeffs, logpi_, r, *lease, t);
    std::copy_n(full.begin(), limit_, out.begin());
    return out;
}

// ---------------------------------------------------------------------------
// Codec

Codec::Codec(CodecParams p) : params_(p) {
    validate(params_);
    ctx_ = field_context(params_.m);
}

Codeword Codec::encode_systematic(std::span<const Element> message) const {
    if (message.size() != params_.k)
        throw Error(Errc::BadLength, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                         std::to_string(params_.k));
    std::call_once(encode_plan_once_, [this] {
        std::vector<std::uint32_t> systematic(params_.k);
        for (std::uint32_t i = 0; i < params_.k; ++i) systematic[i] = i;
        encode_plan_ = std::make_unique<ErasurePlan>(ctx_, systematic, params_.n);
    });
    return {encode_plan_->recover(message)};
}

std::vector<Element> Codec::recover(std::span<const ReceivedSymbol> received, std::uint32_t limit,
                                    DecodePath path) const {
    const auto& t = field();
    std::vector<ReceivedSymbol> sorted(received.begin(), received.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].first >= params_.n)
            throw Error(Errc::PositionOutOfRange, "position " + std::to_string(sorted[i].first) + " >= n");
        if (i > 0 && sorted[i].first == sorted[i - 1].first)
            throw Error(Errc::DuplicatePosition, "position " + std::to_string(sorted[i].first) + " repeated");
        if (sorted[i].second >= t.q)
            throw Error(Errc::SymbolOutOfRange, "symbol " + std::to_string(sorted[i].second) + " >= q");
    }
    if (sorted.size() < params_.k)
        throw Error(Errc::NotEnoughSymbols, std::to_string(sorted.size()) + " symbols received, need " +
                                                std::to_string(params_.k));

    std::vector<std::uint32_t> positions(sorted.size());
    std::vector<Element> values(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        positions[i] = sorted[i].first;
        values[i] = sorted[i].second;
    }
    return ErasurePlan(ctx_, positions, limit, path).recover(values);
}

std::vector<Element> Codec::decode(std::span<const ReceivedSymbol> received, DecodePath path) const {
    return recover(received, params_.k, path);
}

Codeword Codec::reconstruct(std::span<const ReceivedSymbol> received, DecodePath path) const {
    return {recover(received, params_.n, path)};
}

ErasurePlan Codec::plan(std::span<const std::uint32_t> positions, std::uint32_t limit, DecodePath path) const {
    for (std::uint32_t x : positions)
        if (x >= params_.n) throw Error(Errc::PositionOutOfRange, "position " + std::to_string(x) + " >= n");
    if (positions.size() < params_.k)
        throw Error(Errc::NotEnoughSymbols, std::to_string(positions.size()) + " symbols received, need " +
                                                std::to_string(params_.k));
    if (limit > params_.n) throw Error(Errc::BadParams, "limit exceeds n");
    return ErasurePlan(ctx_, positions, limit, path);
}

Codeword encode_systematic(std::span<const Element> message, const CodecParams& p) {
    return Codec(p).encode_systematic(message);
}

std::vector<Element> decode(std::span<const ReceivedSymbol> received, const CodecParams& p) {
    return Codec(p).decode(received);
}

Codeword reconstruct(std::span<const ReceivedSymbol> received, const CodecParams& p) {
    return Codec(p).reconstruct(received);
}

}  // namespace rswe::codec
