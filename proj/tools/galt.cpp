#include <iostream>

#include "galt/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return galt::run_cli(args, std::cout, std::cerr);
}
