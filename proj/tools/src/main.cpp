#include <iostream>

#include "defectctl/app.hpp"

int main(int argc, char** argv) {
  return defectctl::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
