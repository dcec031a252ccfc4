#include <iostream>

#include "ellrs/cli.hpp"

int main(int argc, char** argv) { return ellrs::run_cli(argc, argv, std::cout, std::cerr); }
