from .dot import grading_dot as grading_dot, write_grading_dot as write_grading_dot
