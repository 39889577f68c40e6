class ConvergenceError(ArithmeticError):
    """QR or Jacobi iteration did not converge within its iteration cap."""

    def __init__(self, message, block=None, iterations=None):
        super().__init__(message)
        self.block = block
        self.iterations = iterations
