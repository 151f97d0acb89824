#include <iostream>

#include "gaborlat/cli.hpp"

int main(int argc, char** argv) { return gaborlat::cli::main(argc, argv, std::cout, std::cerr); }
