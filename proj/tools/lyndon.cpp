// lyndon: build, verify, query, generate and benchmark Lyndon arrays.
//
// Exit codes: 0 success, 1 verification or integrity failure, 2 usage error,
// 3 I/O error.

#include "bench.hpp"

#include "lyndon/construct.hpp"
#include "lyndon/corpus.hpp"
#include "lyndon/error.hpp"
#include "lyndon/formats.hpp"
#include "lyndon/oracle.hpp"
#include "lyndon/simd.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lyndon;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

constexpr std::size_t kVerifyLimit = 100'000;

struct VerifyFailure {
    std::string message;
};

std::string split_index_message(const char* what, std::size_t i, std::uint64_t got, std::uint64_t want) {
    std::ostringstream s;
    s << what << " differs at index " << i << ": built " << got << ", oracle " << want;
    return s.str();
}

void verify_plain(const Text& text, const LyndonArray& lambda) {
    const auto built = widen(lambda);
    const auto expect = oracle::lyndon_array_reference(text);
    for (std::size_t i = 1; i <= expect.size(); ++i) {
        if (built[i - 1] != expect[i - 1]) throw VerifyFailure{split_index_message("lambda", i, built[i - 1], expect[i - 1])};
    }
}

void verify_succinct(const Text& text, const AppendOnlyBps& bps) {
    const auto expect = oracle::bps_from_pss(oracle::pss_reference(text));
    if (bps.size() != expect.size()) {
        throw VerifyFailure{"parentheses length " + std::to_string(bps.size()) + ", oracle " +
                            std::to_string(expect.size())};
    }
    for (std::size_t x = 1; x <= expect.size(); ++x) {
        if (bps.bit(x) != expect[x - 1]) throw VerifyFailure{split_index_message("parenthesis", x, bps.bit(x), expect[x - 1])};
    }
}

int cmd_build(const std::string& input, const std::string& output, const std::string& mode, bool verify, bool stats) {
    const auto bytes = formats::read_file(input);
    if (verify && bytes.size() > kVerifyLimit) {
        std::cerr << "error: --verify runs the oracle and is limited to " << kVerifyLimit << " bytes (input has "
                  << bytes.size() << ")\n";
        return kUsage;
    }
    const Text text(std::span<const std::uint8_t>(bytes.data(), bytes.size()));
    BuildStats counters;
    BuildStats* sink = stats ? &counters : nullptr;
    if (mode == "plain") {
        const LyndonArray lambda = build_plain(text, sink);
        if (verify) verify_plain(text, lambda);
        formats::write_file(output, formats::to_bytes(lambda));
    } else {
        const AppendOnlyBps bps = build_succinct(text, sink);
        if (verify) verify_succinct(text, bps);
        formats::write_file(output, formats::to_bytes(bps));
    }
    if (stats) std::cout << counters << '\n';
    if (verify) std::cout << "verified " << bytes.size() << " symbols against the oracle\n";
    return kOk;
}

int cmd_query(const std::string& file, const std::string& op, std::size_t index) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open " + file);
    const SuccinctPssTree tree = formats::read_lbps(in);
    std::size_t value = 0;
    if (op == "lambda") {
        value = tree.lambda(index);
    } else if (op == "nss") {
        value = tree.nss(index);
    } else if (op == "pss") {
        value = tree.pss(index);
    } else if (op == "parent") {
        value = tree.parent(index);
    } else {
        value = tree.subtree_size(index);
    }
    std::cout << value << '\n';
    return kOk;
}

int cmd_gen(const std::string& kind, std::size_t n, unsigned sigma, std::uint64_t seed, const std::string& output) {
    formats::write_file(output, corpus::generate(corpus::parse_kind(kind), n, sigma, seed));
    return kOk;
}

int cmd_bench(const std::vector<std::string>& inputs, const std::vector<std::string>& algos, unsigned reps,
              const std::string& csv) {
    std::vector<bench::Algo> chosen;
    for (const auto& a : algos) chosen.push_back(bench::parse_algo(a));
    std::vector<bench::Row> rows;
    for (const auto& input : inputs) {
        const auto bytes = formats::read_file(input);
        const Text text(std::span<const std::uint8_t>(bytes.data(), bytes.size()));
        for (const bench::Algo algo : chosen) {
            if (algo == bench::Algo::naive && bytes.size() > bench::kNaiveLimit) {
                std::cerr << "note: skipping naive on " << input << " (" << bytes.size() << " bytes > "
                          << bench::kNaiveLimit << ")\n";
                continue;
            }
            rows.push_back(bench::measure(input, text, algo, reps));
        }
    }
    bench::print_table(std::cout, rows);
    if (csv.empty()) {
        std::cout << '\n';
        bench::print_csv(std::cout, rows);
    } else {
        std::ofstream out(csv);
        if (!out) throw IoError("cannot create " + csv);
        bench::print_csv(out, rows);
        if (!out) throw IoError("failed writing " + csv);
    }
    return kOk;
}

void check_threads_env() {
    const char* value = std::getenv("LYNDON_THREADS");
    if (value != nullptr && std::string(value) != "1") {
        std::cerr << "note: LYNDON_THREADS=" << value << " ignored; construction is single-threaded\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear-time Lyndon array construction (plain and succinct)"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string mode = "plain";
    bool verify = false;
    bool stats = false;
    auto* build = app.add_subcommand("build", "Build the Lyndon array (LYAR) or PSS parentheses (LBPS) of a file");
    build->add_option("input", input, "Input file (raw bytes)")->required();
    build->add_option("-o,--output", output, "Output file")->required();
    build->add_option("--mode", mode, "plain or succinct")->check(CLI::IsMember({"plain", "succinct"}));
    build->add_flag("--verify", verify, "Compare with the oracle (inputs up to 100000 bytes)");
    build->add_flag("--stats", stats, "Print construction counters");

    std::string bps_file;
    std::string op;
    std::size_t index = 0;
    auto* query = app.add_subcommand("query", "Answer one query on an LBPS file");
    query->add_option("file", bps_file, "LBPS file")->required();
    query->add_option("op", op, "lambda, nss, pss, parent or subtree")
        ->required()
        ->check(CLI::IsMember({"lambda", "nss", "pss", "parent", "subtree"}));
    query->add_option("index", index, "Text position (node number for parent/subtree)")->required();

    std::string kind;
    std::size_t n = 0;
    unsigned sigma = 2;
    std::uint64_t seed = 1;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Generate a test text");
    gen->add_option("kind", kind, "random, fibonacci, thue-morse, periodic, increasing or english")->required();
    gen->add_option("-n,--length", n, "Length in symbols")->required();
    gen->add_option("--sigma", sigma, "Alphabet size (random, increasing) or word length (periodic)");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("-o,--output", gen_output, "Output file")->required();

    std::vector<std::string> inputs;
    std::vector<std::string> algos{"plain", "succinct", "naive"};
    unsigned reps = 5;
    std::string csv;
    auto* bench = app.add_subcommand("bench", "Time the builders; prints a table and CSV");
    bench->add_option("inputs", inputs, "Input files");
    bench->add_option("--algos", algos, "Comma separated subset of plain,succinct,naive")->delimiter(',');
    bench->add_option("--reps", reps, "Repetitions per measurement (odd)");
    bench->add_option("--csv", csv, "Write the CSV here instead of standard output");

    app.add_subcommand("info", "Show the selected SIMD kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    check_threads_env();
    try {
        if (*build) return cmd_build(input, output, mode, verify, stats);
        if (*query) return cmd_query(bps_file, op, index);
        if (*gen) return cmd_gen(kind, n, sigma, seed, gen_output);
        if (*bench) return cmd_bench(inputs, algos, reps, csv);
        std::cout << "simd: " << simd::to_string(simd::kernels().isa) << '\n';
        return kOk;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failed: " << e.message << '\n';
        return kFailed;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return kFailed;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    }
}
