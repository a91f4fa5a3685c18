#include <iostream>

#include "mvsf/cli.hpp"

int main(int argc, char** argv) { return mvsf::cli::run(argc, argv, std::cout, std::cerr); }
