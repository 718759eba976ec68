# Backend test suite
