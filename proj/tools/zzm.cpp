#include <iostream>

#include "zzm/cli.hpp"

int main(int argc, char** argv) { return zzm::cli::run(argc, argv, std::cout, std::cerr); }
