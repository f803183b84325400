#include <iostream>

#include "holestress/cli.hpp"

int main(int argc, char** argv) { return holestress::cli::run(argc, argv, std::cout, std::cerr); }
