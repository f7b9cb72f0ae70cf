#include <iostream>

#include "qlap/cli.hpp"

int main(int argc, char** argv) { return qlap::cli::run(argc, argv, std::cout, std::cerr); }
