#include <iostream>

#include "thermocone/cli.hpp"

int main(int argc, char** argv) {
    return thermocone::cli::run(argc, argv, std::cout, std::cerr);
}
