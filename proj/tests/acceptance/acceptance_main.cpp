#include <cstdlib>
#include <cstring>
#include <iostream>

#include "fracinv/acceptance.hpp"

// one line per criterion; exit status is nonzero if any fails
int main(int argc, char** argv) {
  fracinv::acceptance::Options opt;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--fast")) opt.fast = true;
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
    else {
      std::cerr << "usage: acceptance [--fast] [--seed N]\n";
      return 2;
    }
  }
  bool all = true;
  fracinv::acceptance::run_all(opt, [&](const fracinv::acceptance::Result& r) {
    std::cout << fracinv::acceptance::format_line(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
