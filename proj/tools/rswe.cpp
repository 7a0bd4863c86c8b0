// rswe: shard files with a Reed-Solomon erasure code and rebuild them.
//
//   rswe encode <file> --m 16 --data 1024 --shards 1536 --out shards/
//   rswe decode shards/shard_*.rswe --out restored
//   rswe bench --m 16 --erasures 32768 --seed 1 --repeat 3
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rswe/cli_commands.hpp"
#include "rswe/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon erasure codec over GF(2^m) with Walsh-transform decoding"};
    app.require_subcommand(1);

    rswe::cli::EncodeOptions enc;
    std::string enc_input, enc_out;
    auto* encode = app.add_subcommand("encode", "split a file into n shards, any k of which rebuild it");
    encode->add_option("input", enc_input, "file to encode")->required();
    encode->add_option("--m", enc.m, "field degree")->required()->check(CLI::IsMember({8u, 16u}));
    encode->add_option("--data", enc.data, "data symbols per stripe (k)")->required();
    encode->add_option("--shards", enc.shards, "shards to write (n)")->required();
    encode->add_option("--out", enc_out, "output directory")->required();

    std::vector<std::string> dec_shards;
    std::string dec_out;
    auto* decode = app.add_subcommand("decode", "rebuild a file from surviving shards");
    decode->add_option("shards", dec_shards, "shard files")->required();
    decode->add_option("--out", dec_out, "output file")->required();

    rswe::cli::BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time a full-length decode");
    bench->add_option("--m", bench_opt.m, "field degree (8..20)")->required();
    bench->add_option("--erasures", bench_opt.erasures, "erased coordinates")->required();
    bench->add_option("--seed", bench_opt.seed, "random seed");
    bench->add_option("--repeat", bench_opt.repeat, "timed repetitions (median reported)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*encode) {
            enc.input = enc_input;
            enc.out_dir = enc_out;
            rswe::cli::cmd_encode(enc);
        } else if (*decode) {
            rswe::cli::DecodeOptions opt;
            opt.shards.assign(dec_shards.begin(), dec_shards.end());
            opt.out = dec_out;
            rswe::cli::cmd_decode(opt);
        } else if (*bench) {
            rswe::cli::print_bench(rswe::cli::cmd_bench(bench_opt), std::cout);
        }
    } catch (const rswe::Error& e) {
        std::cerr << "rswe: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rswe: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
