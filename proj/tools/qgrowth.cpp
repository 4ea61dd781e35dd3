#include <iostream>

#include "qgrowth/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qgrowth::cli::run(args, std::cout, std::cerr);
}
