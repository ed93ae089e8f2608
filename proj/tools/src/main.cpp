#include <iostream>

#include "hteq_tools/cli.hpp"

int main(int argc, char** argv) { return hteq::cli::run(argc, argv, std::cout, std::cerr); }
