#include <doctest.h>
TEST_SUITE("qlearner") {}
