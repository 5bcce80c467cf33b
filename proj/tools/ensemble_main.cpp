#include <iostream>
#include <string>
#include <vector>

#include "ensemble/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ensemble::cli::run(args, std::cout, std::cerr);
}
