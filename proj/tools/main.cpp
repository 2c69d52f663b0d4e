#include <iostream>

#include "orbigenus/cli.hpp"

int main(int argc, char** argv) { return orbigenus::run_cli(argc, argv, std::cout, std::cerr); }
