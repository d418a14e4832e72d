#include <doctest.h>
TEST_SUITE("state_space") {}
