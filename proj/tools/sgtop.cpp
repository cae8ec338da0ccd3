#include <iostream>  // for cout, cerr

#include "sgtop/commands.hpp"

int main(int argc, char** argv) {
  return sgtop::run_cli(argc, argv, std::cout, std::cerr);
}
