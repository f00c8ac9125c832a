# Algebraic extension package
