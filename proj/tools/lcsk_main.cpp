#include <iostream>
#include <string>
#include <vector>

#include "lcsk/cli.hpp"

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return lcsk::cli::main(args, std::cin, std::cout, std::cerr);
}
