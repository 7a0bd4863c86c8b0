#include "rswe/erasure_core.hpp"

#include <algorithm>
#include <string>

#include "rswe/error.hpp"
#include "rswe/kernels.hpp"
#include "rswe/walsh.hpp"

namespace rswe::erasure {
namespace {

std::vector<std::uint32_t> indicator_words(const ReceivedSet& r) {
    return {r.indicator.begin(), r.indicator.end()};
}

LogPiVector log_pi_from(const ReceivedSet& r, const FieldTables& t, std::span<const std::uint32_t> lhat) {
    if (r.positions.empty()) throw Error(Errc::EmptyReceivedSet, "no received positions");
    if (r.indicator.size() != t.q) throw Error(Errc::LengthMismatch, "received set belongs to another field");
    const std::uint32_t mod = walsh::mersenne_modulus(t.m);
    auto v = indicator_words(r);
    kernels::fwht_mod(v, mod);
    walsh::mul_mod_mersenne(v, lhat, t.m);
    kernels::fwht_mod(v, mod);
    return {std::move(v)};
}

void check_shapes(const CoeffVector& c, const LogPiVector& logpi, const FieldTables& t) {
    if (c.coeffs.size() != t.q || logpi.logpi.size() != t.q)
        throw Error(Errc::LengthMismatch, "vectors do not span the field");
}

// Pi(x) * s, with Pi(x) = alpha^logpi[x].
inline Element scale_by_pi(Element s, std::uint32_t logpi, const FieldTables& t) {
    if (s == 0) return 0;
    std::uint32_t e = t.log[s] + logpi;
    if (e >= t.order()) e -= t.order();
    return t.exp[e];
}

}  // namespace

std::size_t plane_stride(std::uint32_t q) noexcept { return q < 64 ? q : std::size_t{q} + 16; }
std::size_t narrow_plane_stride(std::uint32_t q) noexcept { return q < 64 ? q : std::size_t{q} + 32; }

std::vector<std::uint32_t> log_table_transform(const FieldTables& t) {
    std::vector<std::uint32_t> lhat(t.log.begin(), t.log.end());
    kernels::fwht_mod(lhat, walsh::mersenne_modulus(t.m));
    return lhat;
}

ReceivedSet ReceivedSet::from_points(const FieldTables& t, std::span<const std::uint32_t> positions,
                                     std::span<const Element> values) {
    if (positions.size() != values.size())
        throw Error(Errc::BadLength, "positions and values differ in length");
    std::vector<std::pair<std::uint32_t, Element>> pairs(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) pairs[i] = {positions[i], values[i]};
    return from_pairs(t, pairs);
}

ReceivedSet ReceivedSet::from_pairs(const FieldTables& t, std::span<const std::pair<std::uint32_t, Element>> pairs) {
    ReceivedSet r;
    r.indicator.assign(t.q, 0);
    std::vector<std::pair<std::uint32_t, Element>> sorted(pairs.begin(), pairs.end());
    std::sort(sorted.begin(), sorted.end());
    r.positions.reserve(sorted.size());
    r.values.reserve(sorted.size());
    for (const auto& [pos, value] : sorted) {
        if (pos >= t.q) throw Error(Errc::PositionOutOfRange, "position " + std::to_string(pos) + " >= q");
        if (value >= t.q) throw Error(Errc::SymbolOutOfRange, "symbol " + std::to_string(value) + " >= q");
        if (r.indicator[pos]) throw Error(Errc::DuplicatePosition, "position " + std::to_string(pos) + " repeated");
        r.indicator[pos] = 1;
        r.positions.push_back(pos);
        r.values.push_back(value);
    }
    return r;
}

std::shared_ptr<const FieldTransforms> precompute_field_transforms(const FieldTables& t) {
    auto f = std::make_shared<FieldTransforms>();
    f->m = t.m;
    f->poly = t.poly;
    f->q = t.q;
    f->stride = plane_stride(t.q);
    f->lhat = log_table_transform(t);

    std::vector<Element> inverse(t.q);
    for (std::uint32_t x = 0; x < t.q; ++x) inverse[x] = gf::inv(x, t);

    const std::uint32_t mask = (std::uint32_t{2} << t.m) - 1;
    const bool narrow = t.m <= kMaxNarrowDegree;
    f->ihat.resize(std::size_t{t.m} * f->stride);
    if (narrow) {
        f->narrow_stride = narrow_plane_stride(t.q);
        f->ihat_half.resize(std::size_t{t.m} * f->narrow_stride);
    }
    for (unsigned j = 0; j < t.m; ++j) {
        std::span<std::uint32_t> plane(f->ihat.data() + std::size_t{j} * f->stride, t.q);
        kernels::bit_plane(plane, inverse, j);
        kernels::fwht_wrap(plane);
        if (narrow) {
            // Exact values lie in [-q, q] and are even.
            std::uint16_t* half = f->ihat_half.data() + std::size_t{j} * f->narrow_stride;
            for (std::uint32_t x = 0; x < t.q; ++x)
                half[x] = static_cast<std::uint16_t>(static_cast<std::int32_t>(plane[x]) >> 1);
        }
        for (auto& w : plane) w &= mask;
    }

    f->basis.resize(t.m);
    for (unsigned i = 0; i < t.m; ++i) f->basis[i] = t.exp[i];
    return f;
}

TransformStack::TransformStack(std::shared_ptr<const FieldTransforms> field) : field_(std::move(field)) {}

std::span<const std::uint32_t> TransformStack::chat(unsigned i) const noexcept {
    if (chat_.empty()) return {};
    return std::span(chat_).subspan(std::size_t{i} * field_->stride, field_->q);
}

std::span<const std::uint16_t> TransformStack::chat_half(unsigned i) const noexcept {
    if (chat16_.empty()) return {};
    return std::span(chat16_).subspan(std::size_t{i} * field_->narrow_stride, field_->q);
}

void TransformStack::reserve_scratch() {
    const std::size_t m = field_->m;
    if (field_->narrow()) {
        chat16_.resize(m * field_->narrow_stride);
        acc16_.resize((2 * m - 1) * field_->narrow_stride);
    } else {
        chat_.resize(m * field_->stride);
        acc_.resize((2 * m - 1) * field_->stride);
    }
}

std::span<std::uint32_t> TransformStack::chat_mut(unsigned i) noexcept {
    return std::span(chat_).subspan(std::size_t{i} * field_->stride, field_->q);
}

std::span<std::uint32_t> TransformStack::acc_mut(unsigned s) noexcept {
    return std::span(acc_).subspan(std::size_t{s} * field_->stride, field_->q);
}

TransformStack precompute_inverse_stack(const FieldTables& t) {
    return TransformStack(precompute_field_transforms(t));
}

LogPiVector compute_log_pi(const ReceivedSet& r, const FieldTables& t) {
    const auto lhat = log_table_transform(t);
    return log_pi_from(r, t, lhat);
}

LogPiVector compute_log_pi(const ReceivedSet& r, const FieldTables& t, const TransformStack& stack) {
    if (!stack.matches(t)) throw Error(Errc::StackFieldMismatch, "stack was built for another field");
    return log_pi_from(r, t, stack.field().lhat);
}

LogPiVector compute_log_pi(const ReceivedSet& r, const FieldTables& t, std::span<const std::uint32_t> lhat) {
    if (lhat.size() != t.q) throw Error(Errc::LengthMismatch, "log-table transform does not span the field");
    return log_pi_from(r, t, lhat);
}

CoeffVector lagrange_coefficients(const ReceivedSet& r, const LogPiVector& logpi, const FieldTables& t) {
    if (logpi.logpi.size() != t.q) throw Error(Errc::LengthMismatch, "log-Pi vector does not span the field");
    CoeffVector c;
    c.coeffs.assign(t.q, 0);
    c.positions = r.positions;
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
        const std::uint32_t x = r.positions[i];
        const std::uint32_t lp = logpi.logpi[x];
        c.coeffs[x] = gf::mul(r.values[i], t.exp[lp == 0 ? 0 : t.order() - lp], t);
    }
    return c;
}

std::vector<Element> evaluate_all(const CoeffVector& c, const LogPiVector& logpi, const ReceivedSet& r,
                                  TransformStack& stack, const FieldTables& t) {
    if (!stack.matches(t)) throw Error(Errc::StackFieldMismatch, "stack was built for another field");
    check_shapes(c, logpi, t);

    const std::size_t q = t.q;
    const unsigned m = t.m;
    std::vector<Element> out(q, 0);
    if (r.size() == q) {
        for (std::size_t i = 0; i < r.size(); ++i) out[r.positions[i]] = r.values[i];
        return out;
    }

    stack.reserve_scratch();
    const FieldTransforms& field = stack.field();
    if (field.narrow()) {
        const std::size_t stride = field.narrow_stride;
        for (unsigned i = 0; i < m; ++i) {
            std::span<std::uint16_t> plane(stack.chat16_.data() + i * stride, q);
            kernels::bit_plane(plane, c.coeffs, i);
            kernels::fwht_wrap(plane);
        }
        kernels::plane_products(std::span(stack.acc16_), std::span<const std::uint16_t>(stack.chat16_),
                                field.ihat_half, m, stride, q);
        for (unsigned s = 0; s + 1 < 2 * m; ++s) {
            std::span<std::uint16_t> acc(stack.acc16_.data() + s * stride, q);
            kernels::fwht_wrap(acc);
            kernels::parity_select_xor(out, std::span<const std::uint16_t>(acc), m - 1, gf::pow_alpha(s, t));
        }
    } else {
        for (unsigned i = 0; i < m; ++i) {
            auto plane = stack.chat_mut(i);
            kernels::bit_plane(plane, c.coeffs, i);
            kernels::fwht_wrap(plane);
        }
        kernels::plane_products(stack.acc_, stack.chat_, field.ihat, m, field.stride, q);
        for (unsigned s = 0; s + 1 < 2 * m; ++s) {
            auto acc = stack.acc_mut(s);
            kernels::fwht_wrap(acc);
            kernels::parity_select_xor(out, acc, m, gf::pow_alpha(s, t));
        }
    }

    for (std::size_t x = 0; x < q; ++x) out[x] = scale_by_pi(out[x], logpi.logpi[x], t);
    for (std::size_t i = 0; i < r.size(); ++i) out[r.positions[i]] = r.values[i];
    return out;
}

std::vector<Element> evaluate_all_low_memory(const CoeffVector& c, const LogPiVector& logpi, const ReceivedSet& r,
                                             const FieldTables& t) {
    check_shapes(c, logpi, t);
    const std::size_t q = t.q;
    const unsigned m = t.m;
    std::vector<Element> out(q, 0);
    if (r.size() == q) {
        for (std::size_t i = 0; i < r.size(); ++i) out[r.positions[i]] = r.values[i];
        return out;
    }

    std::vector<Element> inverse(q);
    for (std::uint32_t x = 0; x < q; ++x) inverse[x] = gf::inv(x, t);
    std::vector<std::uint32_t> chat(q);
    std::vector<std::uint32_t> work(q);

    for (unsigned i = 0; i < m; ++i) {
        kernels::bit_plane(chat, c.coeffs, i);
        kernels::fwht_wrap(chat);
        for (unsigned j = 0; j < m; ++j) {
            kernels::bit_plane(work, inverse, j);
            kernels::fwht_wrap(work);
            for (std::size_t x = 0; x < q; ++x) work[x] *= chat[x];
            kernels::fwht_wrap(work);
            kernels::parity_select_xor(out, work, m, gf::pow_alpha(i + j, t));
        }
    }

    for (std::size_t x = 0; x < q; ++x) out[x] = scale_by_pi(out[x], logpi.logpi[x], t);
    for (std::size_t i = 0; i < r.size(); ++i) out[r.positions[i]] = r.values[i];
    return out;
}

std::vector<Element> evaluate_at_points(const CoeffVector& c, const LogPiVector& logpi,
                                        std::span<const std::uint32_t> pts, const FieldTables& t) {
    check_shapes(c, logpi, t);

    // log c_y for the nonzero coefficients; zero terms drop out of the sum.
    std::vector<std::uint32_t> ys;
    std::vector<std::uint32_t> log_c;
    for (std::uint32_t y : c.positions) {
        if (c.coeffs[y] == 0) continue;
        ys.push_back(y);
        log_c.push_back(t.log[c.coeffs[y]]);
    }

    const std::uint32_t order = t.order();
    std::vector<Element> out;
    out.reserve(pts.size());
    for (std::uint32_t x : pts) {
        if (x >= t.q) throw Error(Errc::PositionOutOfRange, "point " + std::to_string(x) + " >= q");
        if (std::binary_search(c.positions.begin(), c.positions.end(), x))
            throw Error(Errc::PointInReceivedSet, "point " + std::to_string(x) + " was received");
        Element sum = 0;
        for (std::size_t i = 0; i < ys.size(); ++i) {
            std::uint32_t e = log_c[i] + order - t.log[x ^ ys[i]];
            if (e >= order) e -= order;
            sum ^= t.exp[e];
        }
        out.push_back(scale_by_pi(sum, logpi.logpi[x], t));
    }
    return out;
}

}  // namespace rswe::erasure
