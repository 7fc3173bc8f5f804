// Times the OpenMP generator engine against the serial big-integer reference
// on multiplier-ideal systems drawn from the random corpus.
//
//   bench_engine [instances] [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <thread>

#include "toricmult/corpus.hpp"
#include "toricmult/multiplier.hpp"

using namespace toricmult;

namespace {

struct Work {
  HalfspaceSystem system;
  const ToricVariety* x;
};

template <class F>
double time_it(int repeats, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 60;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::mt19937_64 rng(7);
  std::vector<Instance> instances;
  std::vector<Work> work;
  instances.reserve(count);
  for (int i = 0; i < count; ++i) {
    instances.push_back(corpus::brute_instance(rng));
    // Larger exponents make the candidate boxes worth parallelising.
    instances.back().c *= 3;
  }
  for (const auto& in : instances)
    work.push_back({multiplier_ideal(make_pair(in.x, in.delta), in.a, in.c).defining_system, &in.x});

  std::size_t generators = 0;
  for (const auto& w : work) {
    auto a = minimal_lattice_generators(w.system, w.x->sigma_dual(), w.x->dual_hilbert_basis());
    auto b = minimal_lattice_generators_serial(w.system, w.x->sigma_dual(), w.x->dual_hilbert_basis());
    if (a != b) {
      std::cerr << "parallel and serial engines disagree\n";
      return 1;
    }
    generators += a.size();
  }

  const double par = time_it(repeats, [&] {
    for (const auto& w : work) minimal_lattice_generators(w.system, w.x->sigma_dual(), w.x->dual_hilbert_basis());
  });
  const double ser = time_it(repeats, [&] {
    for (const auto& w : work)
      minimal_lattice_generators_serial(w.system, w.x->sigma_dual(), w.x->dual_hilbert_basis());
  });
  std::cout << std::fixed << std::setprecision(3) << "systems " << work.size() << ", generators " << generators
            << ", repeats " << repeats << ", hardware threads " << std::thread::hardware_concurrency() << "\n"
            << "parallel  " << par << " s\n"
            << "serial    " << ser << " s\n"
            << "speedup   " << (par > 0 ? ser / par : 0) << "x\n";
}
