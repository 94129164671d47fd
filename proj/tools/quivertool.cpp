#include <iostream>

#include "quiver/cli.hpp"

int main(int argc, char** argv) {
    return quiver::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
