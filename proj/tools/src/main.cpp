#include <iostream>

#include "cogsem_cli/cli.hpp"

int main(int argc, char** argv) { return cogsem::cli::run(argc, argv, std::cout, std::cerr); }
