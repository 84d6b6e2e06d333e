#include <iostream>

#include "hamtorus/census.hpp"

int main(int argc, char** argv) { return hamtorus::cli_main(argc, argv, std::cout, std::cerr); }
