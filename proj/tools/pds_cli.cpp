#include "pds/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pds::cli::run(argc, argv, std::cout, std::cerr); }
