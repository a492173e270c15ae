package demo.util;

public final class Matrix {
    private final double[][] cells;

    public Matrix(int rows, int cols) {
        cells = new double[rows][cols];
    }

    public void set(int r, int c, double v) {
        cells[r][c] = v;
    }

    public double trace() {
        double sum = 0;
        int n = Math.min(cells.length, cells[0].length);
        for (int i = n - 1; i >= 0; i--) {
            sum += cells[i][i];
        }
        return sum;
    }
}
