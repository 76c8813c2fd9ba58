#include <iostream>

#include "weylcoh/cli.hpp"

int main(int argc, char** argv) { return weylcoh::cli::run(argc, argv, std::cout, std::cerr); }
