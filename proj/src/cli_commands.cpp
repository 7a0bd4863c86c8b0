#include "rswe/cli_commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <random>
#include <string>
#include <system_error>

#include "rswe/codec.hpp"
#include "rswe/erasure_core.hpp"
#include "rswe/error.hpp"
#include "rswe/kernels.hpp"
#include "rswe/shard_format.hpp"

namespace rswe::cli {
namespace fs = std::filesystem;
using gf::Element;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(Errc::IoFailure, "read failed for " + path.string());
    return bytes;
}

void write_file(const fs::path& path, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b = {}) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoFailure, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(a.data()), static_cast<std::streamsize>(a.size()));
    out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
    out.close();
    if (!out) throw Error(Errc::IoFailure, "write failed for " + path.string());
}

Element load_symbol(const std::uint8_t* p, std::size_t width) {
    return width == 1 ? p[0] : static_cast<Element>(p[0] | (p[1] << 8));
}

void store_symbol(std::uint8_t* p, std::size_t width, Element v) {
    p[0] = static_cast<std::uint8_t>(v);
    if (width == 2) p[1] = static_cast<std::uint8_t>(v >> 8);
}

std::uint64_t fnv1a(std::span<const std::uint32_t> words) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t w : words)
        for (int i = 0; i < 4; ++i) {
            h ^= (w >> (8 * i)) & 0xFF;
            h *= 0x100000001b3ull;
        }
    return h;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// Uniform draw in [0, bound) from the raw engine output, so the sequence is
// fixed by the seed alone.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - start).count();
        start = now;
        return s;
    }
};

}  // namespace

std::vector<fs::path> cmd_encode(const EncodeOptions& opt) {
    if (opt.m != 8 && opt.m != 16) throw Error(Errc::BadParams, "--m must be 8 or 16");
    const codec::Codec codec({opt.m, opt.data, opt.shards});

    const auto bytes = read_file(opt.input);
    shard::ShardHeader header;
    header.m = static_cast<std::uint8_t>(opt.m);
    header.k = opt.data;
    header.n = opt.shards;
    header.file_len = bytes.size();
    header.stripe_count = shard::stripe_count_for(bytes.size(), opt.data, opt.m);

    const std::size_t width = shard::symbol_bytes(opt.m);
    const std::size_t k = opt.data;
    const std::size_t n = opt.shards;
    std::vector<std::vector<std::uint8_t>> payloads(n, std::vector<std::uint8_t>(shard::payload_size(header)));

    std::vector<std::uint8_t> padded(std::size_t{header.stripe_count} * k * width, 0);
    std::copy(bytes.begin(), bytes.end(), padded.begin());
    std::vector<Element> message(k);
    for (std::size_t s = 0; s < header.stripe_count; ++s) {
        const std::uint8_t* stripe = padded.data() + s * k * width;
        for (std::size_t j = 0; j < k; ++j) message[j] = load_symbol(stripe + j * width, width);
        const auto word = codec.encode_systematic(message);
        for (std::size_t j = 0; j < n; ++j) store_symbol(payloads[j].data() + s * width, width, word.symbols[j]);
    }

    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) throw Error(Errc::IoFailure, "cannot create " + opt.out_dir.string() + ": " + ec.message());
    std::vector<fs::path> written;
    for (std::uint32_t j = 0; j < n; ++j) {
        header.index = j;
        const auto head = shard::serialize(header);
        auto path = opt.out_dir / ("shard_" + std::to_string(j) + ".rswe");
        write_file(path, head, payloads[j]);
        written.push_back(std::move(path));
    }
    return written;
}

void cmd_decode(const DecodeOptions& opt) {
    struct Loaded {
        shard::ShardHeader header;
        std::vector<std::uint8_t> bytes;
    };
    std::vector<Loaded> shards;
    for (const auto& path : opt.shards) {
        auto bytes = read_file(path);
        auto header = shard::parse_header(bytes);
        if (bytes.size() - shard::kHeaderSize != shard::payload_size(header))
            throw Error(Errc::CorruptHeader, path.string() + ": payload length disagrees with header");
        if (!shards.empty() && !shard::same_stripe_set(shards.front().header, header))
            throw Error(Errc::HeaderMismatch, path.string() + " belongs to a different encoding");
        for (const auto& other : shards)
            if (other.header.index == header.index)
                throw Error(Errc::HeaderMismatch, path.string() + " repeats shard " + std::to_string(header.index));
        shards.push_back({header, std::move(bytes)});
    }
    if (shards.empty()) throw Error(Errc::NotEnoughShards, "no shards given");
    const auto& ref = shards.front().header;
    if (shards.size() < ref.k)
        throw Error(Errc::NotEnoughShards,
                    std::to_string(shards.size()) + " shards given, need " + std::to_string(ref.k));

    std::sort(shards.begin(), shards.end(),
              [](const Loaded& a, const Loaded& b) { return a.header.index < b.header.index; });
    std::vector<std::uint32_t> positions;
    for (const auto& s : shards) positions.push_back(s.header.index);

    const codec::Codec codec({ref.m, ref.k, ref.n});
    const auto plan = codec.plan(positions, ref.k);
    const std::size_t width = shard::symbol_bytes(ref.m);
    const std::size_t stripe_bytes = std::size_t{ref.k} * width;

    std::vector<std::uint8_t> output(std::size_t{ref.stripe_count} * stripe_bytes);
    std::vector<Element> values(shards.size());
    for (std::size_t s = 0; s < ref.stripe_count; ++s) {
        for (std::size_t i = 0; i < shards.size(); ++i)
            values[i] = load_symbol(shards[i].bytes.data() + shard::kHeaderSize + s * width, width);
        const auto message = plan.recover(values);
        for (std::size_t j = 0; j < ref.k; ++j) store_symbol(output.data() + s * stripe_bytes + j * width, width, message[j]);
    }
    output.resize(ref.file_len);

    fs::path tmp = opt.out;
    tmp += ".rswe-tmp";
    try {
        write_file(tmp, output);
        std::error_code ec;
        fs::rename(tmp, opt.out, ec);
        if (ec) throw Error(Errc::IoFailure, "cannot move output into place: " + ec.message());
    } catch (...) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw;
    }
}

BenchReport cmd_bench(const BenchOptions& opt) {
    if (opt.m < 8 || opt.m > 20) throw Error(Errc::BadParams, "--m must be in [8, 20]");
    const std::uint32_t q = std::uint32_t{1} << opt.m;
    if (opt.erasures >= q) throw Error(Errc::BadParams, "--erasures must be below 2^m");
    if (opt.repeat < 1) throw Error(Errc::BadParams, "--repeat must be at least 1");

    BenchReport report;
    report.options = opt;
    report.kernels = kernels::active().name;

    std::mt19937_64 rng(opt.seed);
    const std::uint32_t k = q - opt.erasures;
    std::vector<Element> message(k);
    for (auto& v : message) v = static_cast<Element>(draw(rng, q));

    std::vector<std::uint32_t> order(q);
    for (std::uint32_t i = 0; i < q; ++i) order[i] = i;
    for (std::uint32_t i = 0; i < opt.erasures; ++i) std::swap(order[i], order[i + draw(rng, q - i)]);
    std::vector<std::uint32_t> erased(order.begin(), order.begin() + opt.erasures);
    std::vector<std::uint32_t> kept(order.begin() + opt.erasures, order.end());
    std::sort(erased.begin(), erased.end());
    std::sort(kept.begin(), kept.end());
    report.pattern_digest = fnv1a(erased);

    const auto codeword = codec::Codec({opt.m, k, q}).encode_systematic(message).symbols;
    std::vector<Element> kept_values(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) kept_values[i] = codeword[kept[i]];

    // The decode context persists across repeats, as it would for a stream
    // of stripes; table_build times a fresh construction each round.
    const auto tables = gf::build_field(opt.m);
    erasure::TransformStack stack(erasure::precompute_field_transforms(tables));

    std::vector<double> table_build, log_pi, coefficients, evaluation, total;
    std::vector<Element> decoded;
    for (unsigned run = 0; run < opt.repeat; ++run) {
        Stopwatch clock;
        {
            const auto fresh = gf::build_field(opt.m);
            const auto transforms = erasure::precompute_field_transforms(fresh);
        }
        table_build.push_back(clock.lap());

        const auto received = erasure::ReceivedSet::from_points(tables, kept, kept_values);
        const auto logpi = erasure::compute_log_pi(received, tables, stack);
        log_pi.push_back(clock.lap());

        const auto coeffs = erasure::lagrange_coefficients(received, logpi, tables);
        coefficients.push_back(clock.lap());

        decoded = erasure::evaluate_all(coeffs, logpi, received, stack, tables);
        evaluation.push_back(clock.lap());
        total.push_back(log_pi.back() + coefficients.back() + evaluation.back());
    }

    report.table_build = median(table_build);
    report.log_pi = median(log_pi);
    report.coefficients = median(coefficients);
    report.evaluation = median(evaluation);
    report.total = median(total);
    report.verified = decoded == codeword;
    report.output_digest = fnv1a(decoded);
    return report;
}

void print_bench(const BenchReport& r, std::ostream& os) {
    const auto ms = [](double s) { return s * 1e3; };
    os << "bench m=" << r.options.m << " q=" << (1u << r.options.m) << " erasures=" << r.options.erasures
       << " seed=" << r.options.seed << " repeat=" << r.options.repeat << " kernels=" << r.kernels << '\n';
    os << std::fixed << std::setprecision(3);
    os << "table_build_ms   " << ms(r.table_build) << '\n';
    os << "log_pi_ms        " << ms(r.log_pi) << '\n';
    os << "coefficients_ms  " << ms(r.coefficients) << '\n';
    os << "evaluation_ms    " << ms(r.evaluation) << '\n';
    os << "total_ms         " << ms(r.total) << '\n';
    os << "verified         " << (r.verified ? "yes" : "no") << '\n';
    os << std::hex << std::setfill('0');
    os << "pattern_digest   0x" << std::setw(16) << r.pattern_digest << '\n';
    os << "output_digest    0x" << std::setw(16) << r.output_digest << '\n';
    os << std::dec << std::setfill(' ');
}

}  // namespace rswe::cli
