#include <symcone/cli.hpp>

#include <iostream>

int main(int argc, char **argv) {
  return symcone::run_cli(argc, argv, std::cout, std::cerr);
}
