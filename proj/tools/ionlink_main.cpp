#include <iostream>

#include "ionlink/cli.hpp"

int main(int argc, char** argv) { return ionlink::cli::run(argc, argv, std::cout, std::cerr); }
