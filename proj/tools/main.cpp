#include <iostream>

#include "heatmap/cli.hpp"

int main(int argc, char** argv) { return heatmap::cli_main(argc, argv, std::cout, std::cerr); }
