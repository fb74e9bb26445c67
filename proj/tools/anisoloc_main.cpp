#include <iostream>

#include "anisoloc/cli.hpp"

int main(int argc, char** argv) { return anisoloc::cli::run(argc, argv, std::cout, std::cerr); }
