#include <iostream>

#include "liecheck/cli.hpp"

int main(int argc, char** argv) { return liecheck::run_cli(argc, argv, std::cout, std::cerr); }
