#include <iostream>
#include <string>
#include <vector>

#include "preadj/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return preadj::run_cli(args, std::cout, std::cerr);
}
