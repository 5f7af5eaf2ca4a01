#include "bench.hpp"

#include "accounting.hpp"

#include "lyndon/construct.hpp"
#include "lyndon/error.hpp"
#include "lyndon/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>

namespace lyndon::bench {

namespace {

struct Sample {
    double seconds;
    std::size_t extra;
};

template <typename F>
Sample run_once(F&& build) {
    const accounting::Scope scope;
    const std::size_t base = accounting::live_bytes();
    const auto start = std::chrono::steady_clock::now();
    auto result = build();
    const auto stop = std::chrono::steady_clock::now();
    // whatever is still live belongs to the output
    const std::size_t kept = accounting::live_bytes() - base;
    const std::size_t peak = scope.extra_peak();
    (void)result;
    return {std::chrono::duration<double>(stop - start).count(), peak > kept ? peak - kept : 0};
}

} // namespace

Algo parse_algo(std::string_view name) {
    if (name == "plain") return Algo::plain;
    if (name == "succinct") return Algo::succinct;
    if (name == "naive") return Algo::naive;
    throw UsageError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algo algo) noexcept {
    switch (algo) {
    case Algo::plain: return "plain";
    case Algo::succinct: return "succinct";
    case Algo::naive: return "naive";
    }
    return "?";
}

Row measure(const std::string& input, const Text& text, Algo algo, unsigned repetitions) {
    if (repetitions % 2 == 0) throw UsageError("repetitions must be odd so the median is a sample");
    std::vector<Sample> samples;
    for (unsigned r = 0; r < repetitions; ++r) {
        switch (algo) {
        case Algo::plain: samples.push_back(run_once([&] { return build_plain(text); })); break;
        case Algo::succinct: samples.push_back(run_once([&] { return build_succinct(text); })); break;
        case Algo::naive: samples.push_back(run_once([&] { return oracle::lyndon_array_reference(text); })); break;
        }
    }
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.seconds < b.seconds; });
    const Sample& mid = samples[samples.size() / 2];
    std::size_t extra = 0;
    for (const Sample& s : samples) extra = std::max(extra, s.extra);
    const double mib = static_cast<double>(text.size()) / (1024.0 * 1024.0);
    return {input,
            algo,
            text.size(),
            mid.seconds,
            mid.seconds > 0 ? mib / mid.seconds : 0.0,
            text.empty() ? 0.0 : static_cast<double>(extra) / static_cast<double>(text.size())};
}

void print_table(std::ostream& out, const std::vector<Row>& rows) {
    const auto flags = out.flags();
    out << std::left << std::setw(28) << "input" << std::setw(10) << "algo" << std::right << std::setw(12) << "bytes"
        << std::setw(14) << "median_s" << std::setw(12) << "MiB/s" << std::setw(16) << "extra_B/sym" << '\n';
    for (const Row& r : rows) {
        out << std::left << std::setw(28) << r.input << std::setw(10) << to_string(r.algo) << std::right
            << std::setw(12) << r.bytes << std::setw(14) << std::fixed << std::setprecision(6) << r.median_seconds
            << std::setw(12) << std::setprecision(2) << r.mibs << std::setw(16) << std::setprecision(4)
            << r.extra_bytes_per_symbol << '\n';
    }
    out.flags(flags);
}

void print_csv(std::ostream& out, const std::vector<Row>& rows) {
    out << "input,algo,bytes,median_seconds,mibs,extra_bytes_per_symbol\n";
    const auto flags = out.flags();
    for (const Row& r : rows) {
        out << r.input << ',' << to_string(r.algo) << ',' << r.bytes << ',' << std::setprecision(9)
            << r.median_seconds << ',' << r.mibs << ',' << r.extra_bytes_per_symbol << '\n';
    }
    out.flags(flags);
}

} // namespace lyndon::bench
