#include "kmismatch/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return kmismatch::cli::main_entry(argc, argv, std::cout, std::cerr);
}
