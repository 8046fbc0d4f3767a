#include <iostream>

#include "umbra/cli.hpp"

int main(int argc, char** argv) { return umbra::cli::run(argc, argv, std::cout, std::cerr); }
