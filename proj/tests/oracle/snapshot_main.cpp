// Recomputes the frozen class counts with the exhaustive pipeline:
//   oracle_snapshot <ell> <k> <max_edges>
// prints "<count> <maximal count>".

#include <cstdlib>
#include <iostream>

#include "oracle.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: oracle_snapshot <ell> <k> <max_edges>\n";
    return 2;
  }
  oracle::PipelineOptions o;
  o.ell = std::atoi(argv[1]);
  o.k = std::atoi(argv[2]);
  o.max_edges = std::atoi(argv[3]);
  o.labelled = false;
  o.contract_each = false;
  auto classes = oracle::classify(o);
  std::size_t maximal = 0;
  for (const auto& [key, rec] : classes) maximal += rec.maximal;
  std::cout << classes.size() << ' ' << maximal << '\n';
}
