# run.py
import sys

from fastapi import FastAPI
from api.endpoints import router  # импортируем router из endpoints.py

# создаём объект FastAPI
app = FastAPI(title="Graph Energy Toolkit")

# подключаем маршруты
app.include_router(router)

# точка входа: `python run.py <подкоманда>` - командная строка, без аргументов - сервер
if __name__ == "__main__":
    if len(sys.argv) > 1:
        from api.cli import main
        sys.exit(main(sys.argv[1:]))
    import uvicorn
    uvicorn.run("run:app", host="127.0.0.1", port=8000, reload=True)
