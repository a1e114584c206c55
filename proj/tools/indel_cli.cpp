#include <iostream>
#include <string>
#include <vector>

#include "indel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return indel::cli::run_cli(args, std::cout, std::cerr);
}
