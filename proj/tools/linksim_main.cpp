#include <iostream>

#include "linksim/app.hpp"

int main(int argc, char** argv) {
  return linksim::app::run_cli(argc, argv, std::cout, std::cerr);
}
