// Benchmark: recognizer throughput over a seeded corpus, serial versus an
// OpenMP parallel fan-out across instances. The per-instance kernels are
// sequential by design (the backtracking carries tight data dependencies),
// so parallelism lives at the corpus level.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "helly/clique_helly.hpp"
#include "helly/gadgets.hpp"
#include "helly/helly_hg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace helly;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Corpus {
  std::vector<Hypergraph> hypergraphs;
  std::vector<Graph> graphs;
};

Corpus makeCorpus(int count) {
  Corpus c;
  for (int i = 0; i < count; ++i) {
    c.hypergraphs.push_back(
        randomHypergraph(30 + i % 10, 80 + i % 40, 6, 1000 + i));
    c.graphs.push_back(randomGraph(24 + i % 8, 0.5, 2000 + i));
  }
  return c;
}

// Returns the number of holding instances so the work cannot be elided.
int sweep(const Corpus& c, bool parallel) {
  int holds = 0;
  const int hn = static_cast<int>(c.hypergraphs.size());
  const int gn = static_cast<int>(c.graphs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : holds) if (parallel)
  for (int i = 0; i < hn; ++i) {
    holds += isPQHelly(c.hypergraphs[i], 2, 1).holds;
    holds += isHereditaryPQHelly(c.hypergraphs[i], 2, 1).holds;
  }
#pragma omp parallel for schedule(dynamic) reduction(+ : holds) if (parallel)
  for (int i = 0; i < gn; ++i) {
    holds += isPQCliqueHelly(c.graphs[i], 2, 1).holds;
    holds += isHereditaryPQCliqueHelly(c.graphs[i], 2, 1).holds;
  }
  return holds;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 64;
  auto corpus = makeCorpus(count);

  double t0 = now();
  int serialHolds = sweep(corpus, false);
  double serial = now() - t0;

  t0 = now();
  int parallelHolds = sweep(corpus, true);
  double parallel = now() - t0;

  if (serialHolds != parallelHolds) {
    std::fprintf(stderr, "mismatch: serial %d vs parallel %d\n", serialHolds,
                 parallelHolds);
    return 1;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("instances: %d hypergraphs + %d graphs, %d verdicts hold\n",
              count, count, serialHolds);
  std::printf("serial:    %.3f s\n", serial);
  std::printf("parallel:  %.3f s (%d threads, speedup %.2fx)\n", parallel,
              threads, parallel > 0 ? serial / parallel : 0.0);
  return 0;
}
