#include <iostream>

#include "posetsym/cli.hpp"

int main(int argc, char** argv) { return posetsym::cli_main(argc, argv, std::cout, std::cerr); }
