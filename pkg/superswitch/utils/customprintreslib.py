# =========
# Functions
# =========
def format_number(value, significant_digits=12):
    """
    Function returning the textual form of a number used by the
    console tables and the report files (general format with the
    requested significant digits). Non-numeric values are
    returned unchanged as strings.
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return str(value)
    return f'{value:.{significant_digits}g}'

def print_table(rows, column_headings=None, column_width_margin=2, significant_digits=6):
    """
    Function that prints a table of results (e.g., the rows of a
    sweep table or the checks of the verification suite).
    Input arguments:
    -) rows: List of lists / tuple of tuples, one nested element
    per table row. All the rows must have the same length.
    -) column_headings: List of strings. Default headings
    (Column 0, Column 1, ...) are used when None.
    -) column_width_margin: Integer added to every column width.
    -) significant_digits: Digits used to print numeric cells.
    """
    try:
        if column_headings is None:
            column_headings = ['Column ' + str(index) for index in range(len(rows[0]))]
        cells = [[format_number(elem, significant_digits) for elem in row] for row in rows]
        # Column widths: widest cell or heading, plus the margin
        column_widths = [max([len(heading)] + [len(row[index]) for row in cells]) + column_width_margin
                         for index, heading in enumerate(column_headings)]
        table_heading = '|' + ''.join(heading.center(width) + '|'
                                      for heading, width in zip(column_headings, column_widths))
        print()
        print('=' * len(table_heading))
        print(table_heading)
        print('=' * len(table_heading))
        for row in cells:
            table_row = '|' + ''.join(cell.center(width) + '|' for cell, width in zip(row, column_widths))
            print(table_row)
            print('-' * len(table_row))
        print()
    except IndexError as e:
        print('--- Exception raised (IndexError) while printing a table - Details: ---')
        print(f'--- {e} ---')
        print('--- Check the contents of the passed data structures ---')
