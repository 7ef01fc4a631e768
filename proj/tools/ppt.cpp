#include <iostream>

#include "ppt/cli.hpp"

int main(int argc, char** argv) { return ppt::cli::run(argc, argv, std::cout, std::cerr); }
