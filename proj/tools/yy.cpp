#include <iostream>

#include "yy_cli.hpp"

int main(int argc, char** argv) { return yinyang::cli::run(argc, argv, std::cout, std::cerr); }
