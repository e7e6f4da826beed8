#include <iostream>

#include "fibtree/cli.hpp"

int main(int argc, char** argv) { return fibtree::cli::run(argc, argv, std::cout, std::cerr); }
