#include <iostream>

#include "moment/cli.hpp"

int main(int argc, char** argv) { return moment::run_cli(argc, argv, std::cout, std::cerr); }
