#include <iostream>
#include <string>
#include <vector>

#include "divr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return divr::cli::run(args, std::cout, std::cerr);
}
