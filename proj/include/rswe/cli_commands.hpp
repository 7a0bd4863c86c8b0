#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

// The operations behind the rswe command-line tool, callable in-process.
namespace rswe::cli {

struct EncodeOptions {
    std::filesystem::path input;
    unsigned m = 8;
    std::uint32_t data = 1;    // k
    std::uint32_t shards = 1;  // n
    std::filesystem::path out_dir;
};

// Writes out_dir/shard_<j>.rswe for j in [0, n); returns their paths.
// Throws BadParams, IoFailure.
std::vector<std::filesystem::path> cmd_encode(const EncodeOptions& opt);

struct DecodeOptions {
    std::vector<std::filesystem::path> shards;
    std::filesystem::path out;
};

// Rebuilds the original file from any k consistent shards. The output is
// written to a temporary file and renamed into place, so nothing is left at
// `out` on failure. Throws HeaderMismatch, NotEnoughShards, CorruptHeader,
// IoFailure.
void cmd_decode(const DecodeOptions& opt);

struct BenchOptions {
    unsigned m = 16;
    std::uint32_t erasures = 0;
    std::uint64_t seed = 1;
    unsigned repeat = 3;
};

// Median wall time per phase, in seconds. total covers log-Pi,
// coefficients and evaluation; table_build is reported on its own.
struct BenchReport {
    BenchOptions options;
    const char* kernels = "";
    double table_build = 0;
    double log_pi = 0;
    double coefficients = 0;
    double evaluation = 0;
    double total = 0;
    bool verified = false;
    std::uint64_t pattern_digest = 0;
    std::uint64_t output_digest = 0;
};

// Random full-length codeword, E random erasures, timed full decode.
// Throws BadParams unless 8 <= m <= 20, E < 2^m and repeat >= 1.
BenchReport cmd_bench(const BenchOptions& opt);

void print_bench(const BenchReport& report, std::ostream& os);

}  // namespace rswe::cli
