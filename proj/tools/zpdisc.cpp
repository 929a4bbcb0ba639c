#include <iostream>

#include "zpdisc/cli.hpp"

int main(int argc, char** argv) {
  return zpdisc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout,
                         std::cerr);
}
