#include <iostream>

#include "superflow/cli.hpp"

int main(int argc, char** argv) { return superflow::run_cli(argc, argv, std::cout, std::cerr); }
