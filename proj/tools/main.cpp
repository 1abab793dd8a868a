#include <iostream>

#include "schurnorm/cli.hpp"

int main(int argc, char** argv) { return schurnorm::cli::run(argc, argv, std::cout, std::cerr); }
