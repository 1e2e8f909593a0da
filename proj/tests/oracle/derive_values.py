"""Independent numpy reference for the hand-derivable example values.

Run once; the printed numbers are pasted into tests/test_examples.cpp.
"""
import numpy as np
from scipy.linalg import null_space

np.set_printoptions(precision=17)
X = np.array([[0, 1], [1, 0]], dtype=complex)

print("eig(X)", np.linalg.eigvalsh(X))
print("opnorm(X)", np.linalg.norm(X, 2))
Z = np.diag([1, -1]).astype(complex)
print("sandwich(X, Z)", (X @ Z @ X.conj().T).real)

const_map = np.array([[1, 1], [0, 0]], dtype=complex)
print("opnorm(const)", np.linalg.norm(const_map, 2), "sqrt2", np.sqrt(2))
print("isometry defect", np.linalg.norm(const_map.conj().T @ const_map - np.eye(2)))

f = np.array([[1, -1j]])
t = f.conj().ravel()
print("riesz t", t, "check", [np.vdot(t, e) for e in np.eye(2)], f.ravel())

q, _ = np.linalg.qr(np.array([[1, 1], [1, 0]], dtype=complex).T)
q = q * np.sign(q[0].real)  # first coordinate positive
print("gram_schmidt", q.T)

u = np.array([1, 1]) / np.sqrt(2)
print("leq residual", np.linalg.norm(u - np.array([1, 0]) * np.vdot([1, 0], u)))

PS = np.outer(u, u.conj())
PT = np.diag([1, 0]).astype(complex)
stack = np.vstack([np.eye(2) - PS, np.eye(2) - PT])
print("meet dim", null_space(stack).shape[1])

t2 = np.array([1, 1], dtype=complex)
P = np.column_stack([(np.vdot(t2, e) / np.vdot(t2, t2)) * t2 for e in np.eye(2)])
print("proj", P.real)

print("eigenspace(1,X)", null_space(X - np.eye(2)).ravel())

rng = np.random.default_rng(0)
for _ in range(3):
    A = rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))
    L = np.linalg.pinv(A)
    print("left inverse defect", np.linalg.norm(L @ A - np.eye(2)))
