#include <iostream>
#include <string>
#include <vector>

#include "invograph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return invograph::cli::run(args, std::cout, std::cerr);
}
