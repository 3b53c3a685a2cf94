// Walks through the classification pipeline for SO(7): enumerate every
// dominant weight whose module is small enough to embed, compute the
// fixed-subspace dimension for each, and compare the survivors against the
// expected minimal embedding.

#include <flagdim/flagdim.hpp>

#include <iostream>

using namespace flagdim;

int main() {
  const int n = 7;
  const auto rep = verify_theorem(GroupKind::SO, n);

  std::cout << "classification for " << group_name(rep.group, rep.group_n)
            << " (dimension bound " << rep.bound << ")\n\n";
  for (const auto& cw : rep.enumerated) {
    std::cout << "  " << format_coords(cw.mu) << "  dim " << cw.dim
              << "  parity " << (cw.parity_pass ? "yes" : "no ") << "  fixed "
              << (cw.fixed_dim ? cw.fixed_dim->str() : "-") << "\n";
  }

  std::cout << "\nsurvivors:";
  for (const auto& mu : rep.survivors) std::cout << " " << format_coords(mu);
  std::cout << "\nverdict: "
            << (rep.verdict == Verdict::Match ? "match" : "mismatch") << "\n";
  return rep.verdict == Verdict::Match ? 0 : 1;
}
