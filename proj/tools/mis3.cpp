#include <iostream>
#include <string>
#include <vector>

#include "mis3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mis3::cli::run(args, std::cin, std::cout, std::cerr);
}
