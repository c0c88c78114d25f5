#include "jred/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return jred::run_cli(argc, argv, std::cout, std::cerr); }
