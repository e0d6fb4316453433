// Compares the serial and OpenMP paths of the enumeration kernels: the
// brute-force coloring oracle over its flat assignment space, and the corpus
// classification fan-out. Results must agree exactly; timings are printed.

#include <chrono>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linkcolor/coloring.hpp"
#include "linkcolor/diagram.hpp"
#include "linkcolor/verify.hpp"

using namespace linkcolor;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

bool all_agree = true;

void bench_oracle(const std::string& name, const Diagram& d, long long n) {
    OracleOptions serial{Int(1000000000), false};
    OracleOptions parallel{Int(1000000000), true};

    auto t0 = Clock::now();
    auto a = brute_force_colorings(d, n, serial);
    auto t1 = Clock::now();
    auto b = brute_force_colorings(d, n, parallel);
    auto t2 = Clock::now();

    bool same = a == b;
    all_agree = all_agree && same;
    std::cout << "oracle " << name << " n=" << n << ": " << a.size() << " colorings, serial "
              << seconds(t0, t1) << "s, parallel " << seconds(t1, t2) << "s, speedup "
              << seconds(t0, t1) / seconds(t1, t2) << (same ? "" : "  MISMATCH") << '\n';
}

std::string small_corpus() {
    std::ostringstream ss;
    ss << "hopf\t" << Diagram::torus_two_strand(2).serialize() << '\n';
    ss << "t24\t" << Diagram::torus_two_strand(4).serialize() << '\n';
    ss << "t26\t" << Diagram::torus_two_strand(6).serialize() << '\n';
    ss << "p222\t" << Diagram::pretzel({2, 2, 2}).serialize() << '\n';
    ss << "p3232\t" << Diagram::pretzel({3, 2, 3, 2}).serialize() << '\n';
    ss << "p666\t" << Diagram::pretzel({6, 6, 6}).serialize() << '\n';
    return ss.str();
}

void bench_corpus() {
    VerifyConfig cfg = VerifyConfig::range(3, 8);
    std::string corpus = small_corpus();

    auto t0 = Clock::now();
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    std::istringstream in1(corpus);
    CorpusReport serial = run_corpus(in1, cfg);
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
    auto t1 = Clock::now();
    std::istringstream in2(corpus);
    CorpusReport parallel = run_corpus(in2, cfg);
    auto t2 = Clock::now();

    bool same = corpus_csv(serial, cfg) == corpus_csv(parallel, cfg) && serial.ok;
    all_agree = all_agree && same;
    std::cout << "corpus classify (" << serial.rows.size() << " links, degrees 3..8): serial "
              << seconds(t0, t1) << "s, parallel " << seconds(t1, t2) << "s, speedup "
              << seconds(t0, t1) / seconds(t1, t2) << (same ? "" : "  MISMATCH")
              << (serial.ok ? "" : "  INCONSISTENT") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "built without openmp; parallel paths run serially\n";
#endif
    bench_oracle("T(2,6)", Diagram::torus_two_strand(6), 4);
    if (!quick) {
        bench_oracle("T(2,7)", Diagram::torus_two_strand(7), 4);
        bench_oracle("T(2,8)", Diagram::torus_two_strand(8), 4);
        bench_oracle("T(2,8)", Diagram::torus_two_strand(8), 5);
    }
    bench_corpus();
    return all_agree ? 0 : 1;
}
