#include <iostream>

#include "blaschke_lab/cli.hpp"

int main(int argc, char** argv) { return blaschke_lab::run_cli(argc, argv, std::cout, std::cerr); }
