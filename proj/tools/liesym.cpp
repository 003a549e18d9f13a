#include "liesym/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return liesym::run_cli(argc, argv, std::cout, std::cerr);
}
