#include <iostream>

#include "kummer7/cli.hpp"

int main(int argc, char** argv) { return kummer7::cli::run(argc, argv, std::cout, std::cerr); }
