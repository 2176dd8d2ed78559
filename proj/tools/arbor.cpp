#include <iostream>

#include "arbor/cli.hpp"

int main(int argc, char** argv) {
  return arbor::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
