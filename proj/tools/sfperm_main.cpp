#include <iostream>

#include "sfperm/cli.hpp"

int main(int argc, char** argv) { return sfperm::cli::dispatch(argc, argv, std::cout, std::cerr); }
