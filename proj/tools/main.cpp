#include <iostream>

#include "copslab/cli/app.hpp"

int main(int argc, char** argv) { return copslab::cli::run(argc, argv, std::cout, std::cerr); }
