#include <iostream>
#include <string>
#include <vector>

#include "oddhole_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return oddhole::cli::run(args, std::cin, std::cout, std::cerr);
}
