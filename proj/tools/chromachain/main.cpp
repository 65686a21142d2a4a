#include "chromachain/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return chromachain::cli::run_cli(argc, argv, std::cout, std::cerr); }
