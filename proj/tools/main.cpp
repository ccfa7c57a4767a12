// Command-line front end: simulate a protocol run, attack a transcript,
// verify a recovered key against the stored one, or benchmark the span
// closure. Exit codes: 0 success, 1 cryptographic failure (attack failure,
// key mismatch, bound violation), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lindecomp/attacks.hpp"
#include "lindecomp/bench.hpp"
#include "lindecomp/json_io.hpp"

namespace {

using namespace lindecomp;

constexpr int kExitOk = 0;
constexpr int kExitCryptoFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoul(item));
    return out;
}

// Message vectors accept decimal or 0x-prefixed hex entries.
VectorF parse_message(const std::string& text, Fe p) {
    std::vector<std::int64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        values.push_back(std::stoll(item, nullptr, 0));
    }
    if (values.empty())
        throw ParseError("empty message vector");
    return VectorF::from_ints(p, values);
}

struct RunOptions {
    std::string protocol = "kolee";
    Fe modulus = kDefaultModulus;
    std::size_t dim = 4;
    std::vector<std::size_t> blocks{2, 2};
    std::string fixture_family; // defaults per protocol
    std::vector<std::size_t> word_len{3, 8};
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string message;
    std::string schedule_path;
    std::string out_prefix = "run";
};

int cmd_run(const RunOptions& opt) {
    const ProtocolId protocol = protocol_from_name(opt.protocol);
    if (opt.word_len.size() != 2 || opt.word_len[0] > opt.word_len[1])
        throw ParseError("--word-len needs LO,HI with LO <= HI");
    const WordLengthRange words{opt.word_len[0], opt.word_len[1]};

    std::string family = opt.fixture_family;
    if (family.empty())
        family = protocol == ProtocolId::harley ? "polynomial" : "block";

    ProtocolFixture fx;
    if (family == "block") {
        if (opt.blocks.size() != 2)
            throw ParseError("--blocks needs N1,N2");
        fx = make_block_fixture(opt.blocks[0], opt.blocks[1], 2, 2, opt.modulus, opt.seed);
    } else if (family == "polynomial") {
        fx = make_polynomial_fixture(opt.dim, opt.modulus, opt.seed);
    } else {
        throw ParseError("--fixture must be 'block' or 'polynomial'");
    }
    if (protocol == ProtocolId::harley && family != "polynomial")
        throw ParseError("the harley protocol needs the polynomial fixture family");

    Rng rng(Rng::split(opt.seed, 1));
    HonestResult result;
    switch (protocol) {
    case ProtocolId::wang:
        result = run_wang(fx, rng, words);
        break;
    case ProtocolId::kolee:
        result = run_kolee(fx, rng, words);
        break;
    case ProtocolId::harley: {
        VectorF message = opt.message.empty()
                              ? [&] {
                                    VectorF x(fx.modulus, fx.dimension);
                                    for (std::size_t i = 0; i < fx.dimension; ++i)
                                        x.at(i) = rng.field_element(fx.modulus);
                                    return x;
                                }()
                              : parse_message(opt.message, fx.modulus);
        result = run_harley(fx, message, rng, words);
        break;
    }
    case ProtocolId::generic: {
        if (opt.schedule_path.empty())
            throw ParseError("--schedule FILE is required for the generic protocol");
        Schedule schedule = schedule_from_json(load_json_file(opt.schedule_path));
        result = run_generic(fx, schedule, rng, words);
        break;
    }
    }

    if (!(result.key_alice == result.key_bob))
        throw FixtureError("honest run produced disagreeing keys");

    const std::string transcript_path = opt.out_prefix + ".transcript.json";
    const std::string key_path = opt.out_prefix + ".key.json";
    save_json_file(transcript_path, transcript_to_json(result.transcript));
    save_json_file(key_path, key_to_json(protocol, result.key_alice));
    std::cout << "protocol " << protocol_name(protocol) << ", modulus " << fx.modulus
              << ", dimension " << fx.dimension << ", seed " << opt.seed << "\n"
              << "transcript: " << transcript_path << " (" << result.transcript.messages.size()
              << " messages)\nkey:        " << key_path << "\n";
    return kExitOk;
}

Payload attack_transcript(const Transcript& t, const std::string& plan_path) {
    switch (t.protocol) {
    case ProtocolId::wang:
        return attack_wang(t);
    case ProtocolId::kolee:
        return attack_kolee(t);
    case ProtocolId::harley:
        return attack_harley(t);
    case ProtocolId::generic: {
        if (plan_path.empty())
            throw ParseError("generic transcripts need --plan FILE");
        AttackPlan plan = plan_from_json(load_json_file(plan_path));
        return execute_plan(t, plan);
    }
    }
    throw ParseError("unsupported protocol id");
}

int cmd_attack(const std::string& transcript_path, const std::string& plan_path) {
    Transcript t = transcript_from_json(load_json_file(transcript_path));
    Payload recovered = attack_transcript(t, plan_path);
    std::cout << key_to_json(t.protocol, recovered).dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& transcript_path, const std::string& key_path,
               const std::string& plan_path) {
    Transcript t = transcript_from_json(load_json_file(transcript_path));
    Payload stored = key_from_json(load_json_file(key_path));
    Payload recovered = attack_transcript(t, plan_path);
    if (recovered == stored) {
        std::cout << "key recovered from transcript matches stored key\n";
        return kExitOk;
    }
    std::cerr << "key mismatch: attack output differs from stored key\n";
    return kExitCryptoFail;
}

struct BenchOptions {
    std::vector<std::size_t> ns{2, 3, 4, 5};
    std::vector<std::size_t> ks{1, 2, 3};
    Fe modulus = kDefaultModulus;
    std::size_t seeds = 3;
    std::uint64_t seed = 1;
    std::string out_csv = "bench.csv";
    std::string out_summary;
};

int cmd_bench(const BenchOptions& opt) {
    if (opt.ns.empty() || opt.ks.empty() || opt.seeds == 0)
        throw ParseError("bench grid is empty");
    for (std::size_t n : opt.ns)
        if (n < 2)
            throw ParseError("bench needs n >= 2");
    std::vector<BenchCell> grid;
    for (std::size_t n : opt.ns)
        for (std::size_t k : opt.ks)
            grid.push_back({n, k, opt.modulus});

    auto records = bench_span_closure(grid, opt.seeds, opt.seed);

    std::ofstream csv(opt.out_csv);
    if (!csv)
        throw ParseError("cannot write " + opt.out_csv);
    write_bench_csv(csv, records);

    const Json summary = bench_summary(records);
    const std::string summary_path =
        opt.out_summary.empty() ? opt.out_csv + ".summary.json" : opt.out_summary;
    save_json_file(summary_path, summary);

    std::cout << "bench: " << records.size() << " records -> " << opt.out_csv << ", summary -> "
              << summary_path << "\n";
    if (!all_bounds_ok(records)) {
        std::cerr << "structural bound violated in at least one record\n";
        return kExitCryptoFail;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sandwich-protocol simulators and the linear decomposition attack"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "simulate a protocol run and write transcript + key");
    run->add_option("--protocol", run_opt.protocol, "wang | kolee | harley | generic")
        ->default_val("kolee");
    run->add_option("--modulus", run_opt.modulus, "odd prime modulus")->default_val(kDefaultModulus);
    run->add_option("--dim", run_opt.dim, "matrix size for polynomial fixtures");
    auto* blocks_opt = run->add_option(
        "--blocks", [&run_opt](const std::vector<std::string>& vals) {
            run_opt.blocks = parse_size_list(vals.back());
            return true;
        },
        "block sizes N1,N2 for block fixtures");
    (void)blocks_opt;
    run->add_option("--fixture", run_opt.fixture_family, "block | polynomial");
    run->add_option("--word-len", [&run_opt](const std::vector<std::string>& vals) {
        run_opt.word_len = parse_size_list(vals.back());
        return true;
    }, "private word length range LO,HI");
    run->add_option("--seed", run_opt.seed, "run seed (required)")->required();
    run->add_option("--message", run_opt.message,
                    "message vector for harley, comma-separated ints (0x hex accepted)");
    run->add_option("--schedule", run_opt.schedule_path, "schedule JSON for the generic protocol");
    run->add_option("--out", run_opt.out_prefix, "output path prefix")->default_val("run");

    std::string transcript_path, plan_path, key_path;
    CLI::App* attack = app.add_subcommand("attack", "recover the key from a transcript file");
    attack->add_option("transcript", transcript_path, "transcript JSON")->required();
    attack->add_option("--plan", plan_path, "attack plan JSON (generic transcripts)");

    CLI::App* verify = app.add_subcommand("verify", "attack a transcript and compare with a key file");
    verify->add_option("transcript", transcript_path, "transcript JSON")->required();
    verify->add_option("key", key_path, "key JSON")->required();
    verify->add_option("--plan", plan_path, "attack plan JSON (generic transcripts)");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "span-closure scaling grid");
    bench->add_option("--n", [&bench_opt](const std::vector<std::string>& vals) {
        bench_opt.ns = parse_size_list(vals.back());
        return true;
    }, "matrix sizes, e.g. 2,3,4,5");
    bench->add_option("--k", [&bench_opt](const std::vector<std::string>& vals) {
        bench_opt.ks = parse_size_list(vals.back());
        return true;
    }, "generator counts, e.g. 1,2,3");
    bench->add_option("--p", bench_opt.modulus, "modulus")->default_val(kDefaultModulus);
    bench->add_option("--seeds", bench_opt.seeds, "seeds per cell")->default_val(3);
    bench->add_option("--seed", bench_opt.seed, "base seed")->default_val(1);
    bench->add_option("--out", bench_opt.out_csv, "CSV output path")->default_val("bench.csv");
    bench->add_option("--summary", bench_opt.out_summary, "summary JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed())
            return cmd_run(run_opt);
        if (attack->parsed())
            return cmd_attack(transcript_path, plan_path);
        if (verify->parsed())
            return cmd_verify(transcript_path, key_path, plan_path);
        if (bench->parsed())
            return cmd_bench(bench_opt);
    } catch (const AttackError& e) {
        std::cerr << "attack failure: " << e.what() << "\n";
        return kExitCryptoFail;
    } catch (const NotInSpanError& e) {
        std::cerr << "attack failure: " << e.what() << "\n";
        return kExitCryptoFail;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
