#include <iostream>

#include "rguard/cli.hpp"

int main(int argc, char** argv) { return rguard::run_cli(argc, argv, std::cout, std::cerr); }
